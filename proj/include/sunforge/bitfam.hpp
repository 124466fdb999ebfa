#pragma once

#include "sunforge/bitfam/bit_vector.hpp"
#include "sunforge/bitfam/columns.hpp"
#include "sunforge/bitfam/family.hpp"
#include "sunforge/bitfam/family_io.hpp"
#include "sunforge/bitfam/q_vector.hpp"
#include "sunforge/errors.hpp"
