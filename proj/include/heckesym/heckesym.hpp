#pragma once

#include "heckesym/errors.hpp"
#include "heckesym/partition.hpp"
#include "heckesym/permutation.hpp"
#include "heckesym/simple_subset.hpp"
#include "heckesym/parabolic_quotient.hpp"
#include "heckesym/hessenberg.hpp"
#include "heckesym/rational.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/kostka.hpp"
#include "heckesym/symfunc.hpp"
#include "heckesym/hecke_algebra.hpp"
#include "heckesym/kazhdan_lusztig.hpp"
#include "heckesym/hecke_character.hpp"
#include "heckesym/chromatic.hpp"
#include "heckesym/admissible.hpp"
#include "heckesym/centralizer.hpp"
#include "heckesym/hybrid.hpp"
#include "heckesym/flags.hpp"
#include "heckesym/json_io.hpp"
