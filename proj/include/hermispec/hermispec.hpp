#pragma once

#include "hermispec/canonical.hpp"
#include "hermispec/charpoly.hpp"
#include "hermispec/claims.hpp"
#include "hermispec/cycles.hpp"
#include "hermispec/enumerate.hpp"
#include "hermispec/error.hpp"
#include "hermispec/families.hpp"
#include "hermispec/gaussian.hpp"
#include "hermispec/graph_json.hpp"
#include "hermispec/mixed_graph.hpp"
#include "hermispec/named.hpp"
#include "hermispec/polynomial.hpp"
#include "hermispec/registry.hpp"
#include "hermispec/search.hpp"
#include "hermispec/simple_graph.hpp"
#include "hermispec/spectra.hpp"
#include "hermispec/switching.hpp"
