#pragma once

#include "tropt/errors.hpp"
#include "tropt/inequalities.hpp"
#include "tropt/io.hpp"
#include "tropt/matrix.hpp"
#include "tropt/optimizer.hpp"
#include "tropt/oracle.hpp"
#include "tropt/scheduler.hpp"
#include "tropt/semifield.hpp"
