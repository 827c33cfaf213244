#pragma once

#include "ghecke/element_parser.hpp"
#include "ghecke/export.hpp"
#include "ghecke/homology.hpp"
#include "ghecke/isomorphisms.hpp"
#include "ghecke/lie_algebra.hpp"
#include "ghecke/module.hpp"
#include "ghecke/presets.hpp"
#include "ghecke/rank_one.hpp"
#include "ghecke/tensor.hpp"
#include "ghecke/verify.hpp"
