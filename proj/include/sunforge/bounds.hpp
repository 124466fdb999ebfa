#pragma once

#include "sunforge/bounds/exact.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/bounds/table.hpp"
