#pragma once

// Umbrella header for the whole library.

#include "sfword/construct.hpp"
#include "sfword/disposability.hpp"
#include "sfword/enumerate.hpp"
#include "sfword/morphism.hpp"
#include "sfword/replicate.hpp"
#include "sfword/serialize.hpp"
#include "sfword/word.hpp"
