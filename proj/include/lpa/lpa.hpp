#pragma once

#include "lpa/error.hpp"
#include "lpa/quiver.hpp"
#include "lpa/field.hpp"
#include "lpa/algebra.hpp"
#include "lpa/rewriting.hpp"
#include "lpa/linalg.hpp"
#include "lpa/expression.hpp"
#include "lpa/report.hpp"
#include "lpa/local_global.hpp"
#include "lpa/structure.hpp"
#include "lpa/dual_graph.hpp"
#include "lpa/json_io.hpp"
