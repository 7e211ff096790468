#pragma once

#include "fibform/cyclo.hpp"
#include "fibform/dyadic.hpp"
#include "fibform/errors.hpp"
#include "fibform/fib.hpp"
#include "fibform/gamma.hpp"
#include "fibform/modarith.hpp"
#include "fibform/oracle.hpp"
#include "fibform/pell.hpp"
#include "fibform/prime_context.hpp"
#include "fibform/report.hpp"
#include "fibform/represent.hpp"
#include "fibform/representation.hpp"
#include "fibform/zalpha.hpp"
