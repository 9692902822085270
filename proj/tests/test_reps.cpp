#include "doctest.h"
TEST_SUITE_BEGIN("reps");
TEST_SUITE_END();
