#pragma once

#include "hhparam/class_oracle.hpp"
#include "hhparam/consistent_oct.hpp"
#include "hhparam/corpus.hpp"
#include "hhparam/enumerate.hpp"
#include "hhparam/error.hpp"
#include "hhparam/graph.hpp"
#include "hhparam/graph_io.hpp"
#include "hhparam/isomorphism.hpp"
#include "hhparam/named_graphs.hpp"
#include "hhparam/oct.hpp"
#include "hhparam/serialize.hpp"
#include "hhparam/solver.hpp"
#include "hhparam/vertex_set.hpp"
#include "hhparam/width.hpp"
#include "hhparam/witness.hpp"
