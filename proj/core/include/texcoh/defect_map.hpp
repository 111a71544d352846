#pragma once

#include <cstdint>
#include <vector>

#include "texcoh/diagram.hpp"
#include "texcoh/image.hpp"
#include "texcoh/rays.hpp"

namespace texcoh {

// Per-pixel defect verdicts over the field's interior. A pixel is a defect
// iff its local mean coherence length falls outside the closed interval
// [l_min, l_max] taken from the governing diagram.
struct DefectMap {
    int frame_width = 0;
    int frame_height = 0;
    int margin = 0;
    int interior_width = 0;
    int interior_height = 0;
    double l_min = 0.0;
    double l_max = 0.0;
    std::vector<double> local_mean;    // per interior pixel, row-major
    std::vector<std::uint8_t> defect;  // per interior pixel, 0/1
    double defect_fraction = 0.0;

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y - margin) * static_cast<std::size_t>(interior_width) +
               static_cast<std::size_t>(x - margin);
    }
    bool is_defect(int x, int y) const { return defect[index(x, y)] != 0; }
    double local_mean_at(int x, int y) const { return local_mean[index(x, y)]; }
};

// Mean of the direction-count order-0 lengths at frame coordinates (x, y).
double local_mean_length(const CoherenceField& field, int x, int y);

// Classifies every interior pixel. The field and diagram must describe the
// same frame and threshold.
DefectMap classify_defects(const CoherenceField& field, const CoherenceDiagram& diagram);

// Red/green half-tone rendering: a defect pixel with rounded grey g becomes
// (128 + g/2, g/2, g/2), a normal one (g/2, 128 + g/2, g/2); margin pixels
// keep their grey (g, g, g) so the original texture stays visible.
RgbImage render_defect_map(const ImageGrid& image, const DefectMap& map);

// Frame-sized 0/1 bitmask of the verdicts; margin pixels are 0.
std::vector<std::uint8_t> defect_bitmask(const DefectMap& map);

}  // namespace texcoh
