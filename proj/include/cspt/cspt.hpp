#pragma once

#include "cspt/bitset.hpp"
#include "cspt/classify.hpp"
#include "cspt/detect.hpp"
#include "cspt/error.hpp"
#include "cspt/gadgets.hpp"
#include "cspt/graph.hpp"
#include "cspt/graph_io.hpp"
#include "cspt/nae.hpp"
#include "cspt/report.hpp"
#include "cspt/sat.hpp"
#include "cspt/solver.hpp"
#include "cspt/verify.hpp"
