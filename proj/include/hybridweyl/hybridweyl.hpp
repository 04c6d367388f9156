#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "rootsystem.hpp"
#include "weyl.hpp"
#include "expsum.hpp"
#include "multiplicity.hpp"
#include "subsystem.hpp"
#include "hybrid.hpp"
#include "record.hpp"
#include "cache.hpp"
