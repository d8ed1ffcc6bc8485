#pragma once

#include "qqcalc/errors.hpp"
#include "qqcalc/golden.hpp"
#include "qqcalc/json_io.hpp"
#include "qqcalc/laurent.hpp"
#include "qqcalc/ncpoly.hpp"
#include "qqcalc/qcombinatorics.hpp"
#include "qqcalc/qexp.hpp"
#include "qqcalc/qoperators.hpp"
#include "qqcalc/report.hpp"
#include "qqcalc/subst.hpp"
#include "qqcalc/verify.hpp"
