#include "incmat/harness.hpp"

int main(int argc, char** argv) { return incmat::cli_main(argc, argv); }
