#pragma once

// Umbrella header.

#include "audit.hpp"
#include "bounds.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isomorphism.hpp"
#include "reproduce.hpp"
#include "sign_assignment.hpp"
#include "solvers.hpp"
