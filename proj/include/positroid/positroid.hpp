#pragma once

#include "basis_matroid.hpp"
#include "coline.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "ground_subset.hpp"
#include "io.hpp"
#include "le_diagram.hpp"
#include "le_graph.hpp"
#include "routing.hpp"
#include "structure.hpp"
