#pragma once

#include "hopfmi/bseries.hpp"
#include "hopfmi/decoration.hpp"
#include "hopfmi/errors.hpp"
#include "hopfmi/fertility.hpp"
#include "hopfmi/forests.hpp"
#include "hopfmi/hopf_lot.hpp"
#include "hopfmi/json_io.hpp"
#include "hopfmi/lincomb.hpp"
#include "hopfmi/multiindex.hpp"
#include "hopfmi/multiset.hpp"
#include "hopfmi/prelie.hpp"
#include "hopfmi/rational.hpp"
#include "hopfmi/text.hpp"
#include "hopfmi/verify.hpp"
