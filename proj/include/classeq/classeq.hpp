#pragma once

// Umbrella header for the whole library: finite groups as explicit tables,
// conjugacy-class machinery, subgroup predicates, the class-union m
// invariant, unit-fraction (Landau) enumeration, restricted conjugation
// checks, and the catalog/report layer on top.

#include "classeq/arith.hpp"
#include "classeq/automorphisms.hpp"
#include "classeq/catalog.hpp"
#include "classeq/cayley_io.hpp"
#include "classeq/class_union.hpp"
#include "classeq/classes.hpp"
#include "classeq/element_set.hpp"
#include "classeq/error.hpp"
#include "classeq/group.hpp"
#include "classeq/landau.hpp"
#include "classeq/rational.hpp"
#include "classeq/report.hpp"
#include "classeq/subgroups.hpp"
