#pragma once

#include "qflavor/qcore/common.hpp"
#include "qflavor/qcore/layout.hpp"
#include "qflavor/qcore/state.hpp"
#include "qflavor/qcore/unitary.hpp"
#include "qflavor/qcore/density.hpp"
#include "qflavor/qcore/metrics.hpp"
#include "qflavor/qcore/measure.hpp"
#include "qflavor/qcore/random.hpp"
