#pragma once

// Umbrella header for the Nakayama algebra toolkit.

#include "nakayama/census.hpp"
#include "nakayama/classify.hpp"
#include "nakayama/error.hpp"
#include "nakayama/ext_nat.hpp"
#include "nakayama/functional_graph.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/kupisch.hpp"
#include "nakayama/report.hpp"
#include "nakayama/serial.hpp"
#include "nakayama/verify.hpp"
