#pragma once

#include "valwb/errors.hpp"
#include "valwb/rational.hpp"
#include "valwb/valgroup.hpp"
#include "valwb/scalar.hpp"
#include "valwb/series.hpp"
#include "valwb/ratfunc.hpp"
#include "valwb/poly.hpp"
#include "valwb/algnum.hpp"
#include "valwb/pcs.hpp"
#include "valwb/valuation.hpp"
#include "valwb/lifting.hpp"
#include "valwb/sampling.hpp"
#include "valwb/text.hpp"
#include "valwb/report.hpp"
#include "valwb/config.hpp"
#include "valwb/examples.hpp"
#include "valwb/selftest.hpp"
#include "valwb/workbench.hpp"
