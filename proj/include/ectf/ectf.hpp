#pragma once

#include "ectf/bitset.hpp"
#include "ectf/cayley.hpp"
#include "ectf/errors.hpp"
#include "ectf/families.hpp"
#include "ectf/family_spec.hpp"
#include "ectf/graph.hpp"
#include "ectf/graph6.hpp"
#include "ectf/hypercube.hpp"
#include "ectf/isomorphism.hpp"
#include "ectf/parallel.hpp"
#include "ectf/report.hpp"
#include "ectf/rng.hpp"
#include "ectf/shattered.hpp"
#include "ectf/table.hpp"
#include "ectf/verify.hpp"
