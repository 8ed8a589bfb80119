#pragma once

#include "gaussinv/diagram.hpp"
#include "gaussinv/error.hpp"
#include "gaussinv/fuzz.hpp"
#include "gaussinv/generate.hpp"
#include "gaussinv/knot_invariants.hpp"
#include "gaussinv/laurent.hpp"
#include "gaussinv/link_invariants.hpp"
#include "gaussinv/longflat_invariants.hpp"
#include "gaussinv/moves.hpp"
#include "gaussinv/parity.hpp"
#include "gaussinv/report.hpp"
#include "gaussinv/rng.hpp"
#include "gaussinv/cli.hpp"
