#pragma once

#include "partitions.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "chern_vector.hpp"
#include "symmetric.hpp"
#include "qlinalg.hpp"
#include "charvec.hpp"
#include "manifolds.hpp"
#include "json_io.hpp"
#include "verify.hpp"
