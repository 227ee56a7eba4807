#include "odc/cli.hpp"

int main(int argc, char** argv) { return odc::run(argc, argv); }
