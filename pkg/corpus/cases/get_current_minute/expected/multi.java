public class TwoPickers {
    int start;
    int stop;

    void read(android.widget.TimePicker a, android.widget.TimePicker b) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            start = a.getMinute();
        } else {
            start = a.getCurrentMinute();
        }
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            stop = b.getMinute();
        } else {
            stop = b.getCurrentMinute();
        }
    }
}
