#pragma once

#include "gsp4/error.hpp"
#include "gsp4/arith/primes.hpp"
#include "gsp4/arith/rational.hpp"
#include "gsp4/arith/surd.hpp"
#include "gsp4/arith/scalar.hpp"
#include "gsp4/arith/series.hpp"
#include "gsp4/arith/dirichlet.hpp"
#include "gsp4/satake.hpp"
#include "gsp4/euler.hpp"
#include "gsp4/hecke.hpp"
#include "gsp4/saito_kurokawa.hpp"
#include "gsp4/weil.hpp"
#include "gsp4/distinguish.hpp"
#include "gsp4/io.hpp"
