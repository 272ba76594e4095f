#pragma once

#include "fibhuff/error.hpp"
#include "fibhuff/numbers.hpp"
#include "fibhuff/wythoff.hpp"
#include "fibhuff/huffman.hpp"
#include "fibhuff/theorems.hpp"
#include "fibhuff/oracle.hpp"
#include "fibhuff/format.hpp"
#include "fibhuff/golden.hpp"
