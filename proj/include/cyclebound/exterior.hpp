#pragma once

#include "cyclebound/exterior/kform.hpp"
#include "cyclebound/exterior/calculus.hpp"
