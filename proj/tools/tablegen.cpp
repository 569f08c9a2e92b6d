// Regenerates the JSON rule tables in data/ from the 2-adic codings.
#include <fstream>
#include <iostream>

#include "hexa/system.hpp"

int main(int argc, char** argv) {
    std::filesystem::path out = argc > 1 ? argv[1] : hexa::data_dir();
    for (const auto& name : hexa::kSystemNames) {
        auto sys = hexa::generate_system(name);
        std::ofstream f(out / (name + ".json"));
        if (!f) {
            std::cerr << "cannot write " << (out / (name + ".json")) << "\n";
            return 2;
        }
        f << hexa::to_json(sys).dump(1) << "\n";
        std::cout << name << ": " << sys.size() << " labels, " << sys.seeds().size() << " seeds\n";
    }
    return 0;
}
