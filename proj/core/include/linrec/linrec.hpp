#pragma once

#include "fiduccia.hpp"
#include "general.hpp"
#include "orders.hpp"
#include "recurrence.hpp"
#include "ring.hpp"
