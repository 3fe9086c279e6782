// Regenerates the committed fixtures/ directory from the library's built-in
// example constructions. Run from the repository root.
#include <fstream>
#include <iostream>

#include "tothom/examples.hpp"
#include "tothom/group.hpp"
#include "tothom/io.hpp"

using namespace tothom;
namespace io = tothom::io;

namespace {

void write_table(const std::string& path, const FiniteGroup& g) {
    std::ofstream out(path);
    out << g.order << "\n";
    for (const auto& row : g.mul) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    io::save_file(dir + "/surrogate_pair.json", io::hsmap_to_json(surrogate_counterexample()));
    io::save_file(dir + "/obstructed_triple.json", io::hsmap_to_json(obstructed_triple()));
    io::save_file(dir + "/planted_tower.json", io::hco_to_json(planted_obstructed_tower()));
    io::save_file(dir + "/zero.json", io::complex_to_json(ChainComplex::zero()));
    auto sur = surrogate_counterexample();
    io::save_file(dir + "/surrogate_C.json", io::bicomplex_to_json(sur.C));
    io::save_file(dir + "/surrogate_D_filtered.json",
                  io::filtered_to_json(totalize(sur.D).filt));
    write_table(dir + "/z2.tbl", FiniteGroup::cyclic(2));
    write_table(dir + "/z3.tbl", FiniteGroup::cyclic(3));
    write_table(dir + "/s3.tbl", FiniteGroup::symmetric3());
    std::cout << "fixtures written to " << dir << "\n";
    return 0;
}
