#pragma once

#include "leibniz/error.hpp"
#include "leibniz/scalar.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/combinatorics.hpp"
#include "leibniz/parallel.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/isoclinism.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"
