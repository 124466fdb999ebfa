#pragma once

#include "sunforge/detect/finders.hpp"
#include "sunforge/detect/predicates.hpp"
#include "sunforge/detect/symdiff.hpp"
#include "sunforge/detect/witness.hpp"
#include "sunforge/detect/witness_json.hpp"
