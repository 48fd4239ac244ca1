#pragma once

#include "cyclebound/theorems/checks.hpp"
#include "cyclebound/theorems/report.hpp"
