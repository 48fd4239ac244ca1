#pragma once

#include "cyclebound/ring/rational.hpp"
#include "cyclebound/ring/polynomial.hpp"
#include "cyclebound/ring/fraction.hpp"
#include "cyclebound/ring/scaled_fraction.hpp"
