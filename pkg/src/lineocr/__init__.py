"""Line-based OCR with CNN-BiLSTM networks trained by CTC."""

__version__ = "0.1.0"
