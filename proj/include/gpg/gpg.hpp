#pragma once

#include "gpg/applications.hpp"
#include "gpg/bigint.hpp"
#include "gpg/bitset.hpp"
#include "gpg/budget.hpp"
#include "gpg/error.hpp"
#include "gpg/finite_field.hpp"
#include "gpg/io.hpp"
#include "gpg/number_theory.hpp"
#include "gpg/oracles.hpp"
#include "gpg/paley_graphs.hpp"
#include "gpg/quadratic_forms.hpp"
#include "gpg/spectra_srg.hpp"
