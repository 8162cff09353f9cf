#include <iostream>

#include "uncommon_app/app.hpp"

int main(int argc, char** argv) { return uncommon::app::run_cli(argc, argv, std::cout, std::cerr); }
