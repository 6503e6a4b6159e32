#pragma once

#include "asymptotics.hpp"
#include "errors.hpp"
#include "infomeasures.hpp"
#include "moments.hpp"
#include "oracle.hpp"
#include "quantities.hpp"
#include "specfun.hpp"
#include "states.hpp"
#include "uncertainty.hpp"
#include "validation.hpp"
