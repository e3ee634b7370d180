#pragma once

#include "sbc/branching.hpp"
#include "sbc/core.hpp"
#include "sbc/lr.hpp"
#include "sbc/oracle.hpp"
#include "sbc/partitions.hpp"
#include "sbc/sym_chars.hpp"
#include "sbc/thresholds.hpp"
#include "sbc/wreath.hpp"
