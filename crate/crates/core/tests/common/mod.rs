pub mod golden;
pub mod props;
