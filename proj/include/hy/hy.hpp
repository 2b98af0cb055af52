#pragma once

// Umbrella header.

#include "hy/canon.hpp"
#include "hy/cells.hpp"
#include "hy/checks.hpp"
#include "hy/coxeter.hpp"
#include "hy/induction.hpp"
#include "hy/inductive.hpp"
#include "hy/io.hpp"
#include "hy/laurent.hpp"
#include "hy/matrix.hpp"
#include "hy/parallel.hpp"
#include "hy/report.hpp"
#include "hy/wgraph.hpp"
