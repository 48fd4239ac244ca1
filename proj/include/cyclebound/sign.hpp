#pragma once

#include "cyclebound/sign/domain.hpp"
#include "cyclebound/sign/sampler.hpp"
#include "cyclebound/sign/sign.hpp"
