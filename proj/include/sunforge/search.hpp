#pragma once

#include "sunforge/search/counting.hpp"
#include "sunforge/search/exact.hpp"
#include "sunforge/search/literal.hpp"
