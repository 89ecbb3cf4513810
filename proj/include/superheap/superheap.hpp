#pragma once

#include "superheap/core.hpp"
#include "superheap/supergraph.hpp"
#include "superheap/heap.hpp"
#include "superheap/lyndon.hpp"
#include "superheap/algebra.hpp"
#include "superheap/linalg.hpp"
#include "superheap/bases.hpp"
#include "superheap/polynomial.hpp"
#include "superheap/chromatic.hpp"
#include "superheap/multiplicity.hpp"
