#pragma once

#include "braids/closure.hpp"
#include "braids/d_invariant.hpp"
#include "braids/divisors.hpp"
#include "braids/laurent.hpp"
#include "braids/lcm.hpp"
#include "braids/markov.hpp"
#include "braids/normal_form.hpp"
#include "braids/orbit.hpp"
#include "braids/permutation.hpp"
#include "braids/rational.hpp"
#include "braids/simple.hpp"
#include "braids/very_simple.hpp"
#include "braids/word.hpp"
