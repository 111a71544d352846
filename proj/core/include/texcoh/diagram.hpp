#pragma once

#include <string>
#include <vector>

#include "texcoh/rays.hpp"

namespace texcoh {

// Frame-averaged coherence lengths, one per direction, plus the extremal
// interval [l_min, l_max] over the order-0 averages. Censored entries are
// included at their capped value; censored_fraction reports how many there
// were so the cap's influence is visible.
struct CoherenceDiagram {
    std::vector<double> l0;  // per direction, pixels
    std::vector<double> lk;  // empty unless an order-k plane was extracted
    int order_k = 0;
    ThresholdSpec threshold;
    double l_min = 0.0;
    double l_max = 0.0;
    double censored_fraction = 0.0;  // order-0 plane

    // provenance, checked by downstream consumers
    int frame_width = 0;
    int frame_height = 0;
    int margin = 0;
    int r_max = 0;

    int direction_count() const noexcept { return static_cast<int>(l0.size()); }
    double anisotropy_ratio() const { return l_min > 0.0 ? l_max / l_min : 0.0; }
};

// Per-direction arithmetic mean of the field's lengths over all interior
// pixels.
CoherenceDiagram average_diagram(const CoherenceField& field);

// CSV block: header, one row per direction (index, angle, L0[, Lk]), then
// summary rows for l_min, l_max, censored_fraction and the threshold
// fraction. Floats carry six decimals.
std::string diagram_to_csv(const CoherenceDiagram& diagram);

// Parses one or more concatenated CSV blocks as emitted by diagram_to_csv.
// Provenance fields are not part of the CSV and stay zero.
std::vector<CoherenceDiagram> diagrams_from_csv(const std::string& text);

// Closed polygon per diagram on a square canvas, all sharing one scale so
// containment between thresholds is visible. Vertex i sits at
// center + scale*L0[i]*(sin theta_i, -cos theta_i); the screen y axis is
// flipped so +y renders upward. Axis ticks are labeled in pixels.
std::string diagram_to_svg(const std::vector<CoherenceDiagram>& diagrams, int canvas_px = 640);

}  // namespace texcoh
