#include "mimetic/snapshot.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little,
              "snapshot files are little-endian raw doubles");

namespace mimetic {

void write_snapshot(const Field3& f, const std::string& base, long step,
                    double time) {
    const GridSpec3& g = f.grid();
    for (int c = 0; c < f.component_count(); ++c) {
        const std::string stem = base + ".c" + std::to_string(c);
        {
            std::ofstream raw(stem + ".f64", std::ios::binary | std::ios::trunc);
            if (!raw) throw std::runtime_error("cannot open " + stem + ".f64");
            raw.write(reinterpret_cast<const char*>(f.component(c)),
                      static_cast<std::streamsize>(f.per_component() *
                                                   static_cast<long>(sizeof(double))));
            if (!raw) throw std::runtime_error("short write to " + stem + ".f64");
        }
        nlohmann::json side{
            {"kind", kind_name(f.kind())}, {"nx", g.nx}, {"ny", g.ny}, {"nz", g.nz},
            {"dx", g.dx}, {"dy", g.dy}, {"dz", g.dz},
            {"component", c}, {"step", step}, {"time", time},
        };
        std::ofstream js(stem + ".json", std::ios::trunc);
        if (!js) throw std::runtime_error("cannot open " + stem + ".json");
        js << side.dump(2) << "\n";
        if (!js) throw std::runtime_error("short write to " + stem + ".json");
    }
}

}  // namespace mimetic
