#pragma once

#include "cyclebound/systems/systems.hpp"
