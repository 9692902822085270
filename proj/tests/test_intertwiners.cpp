#include "doctest.h"
TEST_SUITE_BEGIN("intertwiners");
TEST_SUITE_END();
