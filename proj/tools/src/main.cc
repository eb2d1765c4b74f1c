/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw_cli/commands.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return rtw::cli::run(argc, argv, std::cout, std::cerr);
}
