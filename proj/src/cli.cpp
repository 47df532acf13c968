#include "diagcube/cli.hpp"

#include <ostream>

#include "diagcube/chain.hpp"
#include "diagcube/selftest.hpp"

namespace diagcube {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    // placeholder; full CLI wired up with the geometry modules
    (void)args;
    (void)out;
    err << "diagcube: command line not assembled yet\n";
    return 1;
}

} // namespace diagcube
