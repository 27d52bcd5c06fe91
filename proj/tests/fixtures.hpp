#ifndef LUROTH_TESTS_FIXTURES_HPP
#define LUROTH_TESTS_FIXTURES_HPP

#include "luroth/relations.hpp"

// one shared degree-54 search at p = 2017, computed on first use
const luroth::LurothSearchResult<luroth::FpField>& shared_luroth_2017();

#endif
