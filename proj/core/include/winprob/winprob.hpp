#ifndef WINPROB_WINPROB_HPP
#define WINPROB_WINPROB_HPP

#include "winprob/ccauv.hpp"
#include "winprob/conditional.hpp"
#include "winprob/errors.hpp"
#include "winprob/estimators.hpp"
#include "winprob/exact.hpp"
#include "winprob/generators.hpp"
#include "winprob/io.hpp"
#include "winprob/rng.hpp"
#include "winprob/rules.hpp"
#include "winprob/types.hpp"
#include "winprob/winners.hpp"

#endif
