#pragma once

#include "sunforge/construct/alteration.hpp"
#include "sunforge/construct/counting.hpp"
#include "sunforge/construct/field.hpp"
#include "sunforge/construct/reed_solomon.hpp"
