#pragma once

#include "umbral/dot.hpp"
#include "umbral/expression.hpp"
#include "umbral/moment_spec.hpp"
#include "umbral/multiplicative.hpp"
#include "umbral/oracle.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"
#include "umbral/sequences.hpp"
#include "umbral/serialize.hpp"
#include "umbral/series.hpp"
#include "umbral/series_parse.hpp"
#include "umbral/umbra.hpp"
