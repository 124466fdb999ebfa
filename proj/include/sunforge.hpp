#pragma once

#include "sunforge/bitfam.hpp"
#include "sunforge/bounds.hpp"
#include "sunforge/construct.hpp"
#include "sunforge/detect.hpp"
#include "sunforge/rng.hpp"
#include "sunforge/search.hpp"
