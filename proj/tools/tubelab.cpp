#include "tube/app/cli.hpp"

int main(int argc, char** argv) { return tube::app::run_main(argc, argv); }
