#pragma once

#include "wschatten/complex_matrix.hpp"
#include "wschatten/errors.hpp"
#include "wschatten/extremizers.hpp"
#include "wschatten/holder.hpp"
#include "wschatten/io.hpp"
#include "wschatten/quasinorms.hpp"
#include "wschatten/random.hpp"
#include "wschatten/spectrum.hpp"
