public class TwoPickers {
    int start;
    int stop;

    void read(android.widget.TimePicker a, android.widget.TimePicker b) {
        start = a.getCurrentMinute();
        stop = b.getCurrentMinute();
    }
}
