#pragma once

#include "thinloop/error.hpp"
#include "thinloop/ffield.hpp"
#include "thinloop/liealg.hpp"
#include "thinloop/cartan.hpp"
#include "thinloop/grading.hpp"
#include "thinloop/loop.hpp"
#include "thinloop/runs.hpp"
#include "thinloop/json_io.hpp"
#include "thinloop/acceptance.hpp"
