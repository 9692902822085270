#include "doctest.h"
TEST_SUITE_BEGIN("twovect");
TEST_SUITE_END();
