#pragma once

#include "shbin/bounds.hpp"
#include "shbin/distributions.hpp"
#include "shbin/ensemble.hpp"
#include "shbin/error.hpp"
#include "shbin/integer_distribution.hpp"
#include "shbin/io.hpp"
#include "shbin/methods.hpp"
#include "shbin/metrics.hpp"
#include "shbin/sweep.hpp"
