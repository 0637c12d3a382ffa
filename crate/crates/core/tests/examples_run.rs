#[path = "../examples/distances.rs"]
mod distances;
#[path = "../examples/j_balls.rs"]
mod j_balls;
#[path = "../examples/qh_disks.rs"]
mod qh_disks;
#[path = "../examples/sharp_constants.rs"]
mod sharp_constants;
#[path = "../examples/close_to_convexity.rs"]
mod close_to_convexity;
#[path = "../examples/disconnected_ball.rs"]
mod disconnected_ball;
#[path = "../examples/radius_sweeps.rs"]
mod radius_sweeps;
#[path = "../examples/figures.rs"]
mod figures;
#[path = "../examples/command_line.rs"]
mod command_line;

#[test]
fn run_distances() {
    distances::run_example().unwrap();
}

#[test]
fn run_j_balls() {
    j_balls::run_example().unwrap();
}

#[test]
fn run_qh_disks() {
    qh_disks::run_example().unwrap();
}

#[test]
fn run_sharp_constants() {
    sharp_constants::run_example().unwrap();
}

#[test]
fn run_close_to_convexity() {
    close_to_convexity::run_example().unwrap();
}

#[test]
fn run_disconnected_ball() {
    disconnected_ball::run_example().unwrap();
}

#[test]
fn run_radius_sweeps() {
    radius_sweeps::run_example().unwrap();
}

#[test]
fn run_figures() {
    figures::run_example().unwrap();
}

#[test]
fn run_command_line() {
    command_line::run_example().unwrap();
}
