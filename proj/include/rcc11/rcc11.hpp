#pragma once

// Everything except the command-line front end (rcc11/cli.hpp), which also
// needs CLI11.

#include "rcc11/calculus.hpp"
#include "rcc11/comp_table.hpp"
#include "rcc11/derive.hpp"
#include "rcc11/disk/classify.hpp"
#include "rcc11/disk/generate.hpp"
#include "rcc11/disk/region.hpp"
#include "rcc11/disk/witness.hpp"
#include "rcc11/dyadic.hpp"
#include "rcc11/golden_table.hpp"
#include "rcc11/hole_kind.hpp"
#include "rcc11/interval1d.hpp"
#include "rcc11/lattice_classify.hpp"
#include "rcc11/netcsp.hpp"
#include "rcc11/random.hpp"
#include "rcc11/rational.hpp"
#include "rcc11/relation.hpp"
#include "rcc11/scene.hpp"
#include "rcc11/verify.hpp"
