#pragma once

#include "dompack/biconvex.hpp"
#include "dompack/bicubic.hpp"
#include "dompack/bounds.hpp"
#include "dompack/brooks.hpp"
#include "dompack/exact.hpp"
#include "dompack/generators.hpp"
#include "dompack/graph.hpp"
#include "dompack/graph_io.hpp"
#include "dompack/harness.hpp"
#include "dompack/outerplanar.hpp"
#include "dompack/report.hpp"
