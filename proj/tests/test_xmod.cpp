#include "doctest.h"
TEST_SUITE_BEGIN("xmod");
TEST_SUITE_END();
