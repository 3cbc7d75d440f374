#include "gsp4/cli.hpp"

int main(int argc, char** argv) { return gsp4::cli_dispatch(argc, argv); }
