#pragma once

#include "bccore/scalar.hpp"
#include "bccore/matrix.hpp"
#include "bccore/linalg.hpp"
#include "bccore/ring.hpp"
#include "bccore/matrix_ring.hpp"
#include "bccore/finite_ring.hpp"
#include "bccore/ginverse.hpp"
#include "bccore/oracle.hpp"
#include "bccore/io.hpp"
