#pragma once

#include "tss/activation.hpp"
#include "tss/decompose.hpp"
#include "tss/error.hpp"
#include "tss/exact.hpp"
#include "tss/generate.hpp"
#include "tss/graph.hpp"
#include "tss/io.hpp"
#include "tss/reduce.hpp"
#include "tss/solver_nd.hpp"
#include "tss/solver_tc.hpp"
