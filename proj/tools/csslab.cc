#include <css/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return css::run_cli(argc, argv, std::cout, std::cerr);
}
