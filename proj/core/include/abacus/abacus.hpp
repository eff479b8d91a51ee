#pragma once

#include "abacus/partition.hpp"
#include "abacus/quotient.hpp"
#include "abacus/actions.hpp"
#include "abacus/blocks.hpp"
