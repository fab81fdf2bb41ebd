#ifndef CARK_CARK_HPP
#define CARK_CARK_HPP

#include "cark/class_group.hpp"
#include "cark/combinatorics.hpp"
#include "cark/conjugacy.hpp"
#include "cark/cyclic.hpp"
#include "cark/errors.hpp"
#include "cark/form.hpp"
#include "cark/graph_export.hpp"
#include "cark/integer.hpp"
#include "cark/invariants.hpp"
#include "cark/necklace.hpp"
#include "cark/pell.hpp"
#include "cark/psl2.hpp"

#endif
