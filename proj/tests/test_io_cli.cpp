#include <doctest.h>

TEST_SUITE("io_cli") {}
